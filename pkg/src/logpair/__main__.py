import sys

from logpair.cli import main

sys.exit(main())
