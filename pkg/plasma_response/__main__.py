import sys

from plasma_response.cli import main

sys.exit(main())
