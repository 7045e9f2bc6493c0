"""Entry point for python -m quandle_lab"""

from quandle_lab.cli.main import cli_main

if __name__ == "__main__":
    cli_main()
