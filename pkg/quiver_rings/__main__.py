import sys

from quiver_rings.cli import main

if __name__ == "__main__":
    sys.exit(main())
