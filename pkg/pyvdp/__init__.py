# -*- coding: utf-8 -*-
from pyvdp.util.hooks import Hooks

__author__ = """pyvdp contributors"""
__version__ = '0.1.0'

hooks = Hooks()
