"""Module entry point so `python -m rsbf` behaves like the installed script."""

from .cli import main

if __name__ == "__main__":
    main()
