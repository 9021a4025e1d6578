"""Initialization of oracle package."""
from .roots import *
from .integrals import *
