"""Main entry point for the nhgraph application."""

import sys
from nhgraph.ui.cli import CLI


def main(args=None):
    """Run the nhgraph application.

    Args:
        args: Command line arguments. If None, uses sys.argv[1:]
    """
    if args is None:
        args = sys.argv[1:]

    # If no arguments provided, show help
    if not args:
        args = ["--help"]

    cli = CLI()
    sys.exit(cli.run(args))


if __name__ == "__main__":
    main()
