import sys

from contextualextension.CommandLineInterface import main

if __name__ == "__main__":
    sys.exit(main())
