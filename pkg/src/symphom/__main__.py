import sys

from symphom.cli import main

sys.exit(main())
