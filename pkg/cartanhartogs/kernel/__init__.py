"""Initialization of kernel package."""
from .norm import *
from .bergman import *
