"""python -m braidforge delegates to the command line front end."""

from .cli import main

main()
