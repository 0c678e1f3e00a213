# -*- coding: utf-8 -*-
import sys

from pyvdp.cli import main

sys.exit(main())
