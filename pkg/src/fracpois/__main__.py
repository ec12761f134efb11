"""Allow ``python -m fracpois`` as an alias for the ``fracpois`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
