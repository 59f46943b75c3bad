from planarcube.cli import main
import sys

sys.exit(main())
