import sys

from bdm.cli import main

sys.exit(main())
