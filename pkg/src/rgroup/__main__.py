import sys

from rgroup.cli.main import main

sys.exit(main())
