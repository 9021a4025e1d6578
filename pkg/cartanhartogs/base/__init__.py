"""Initialization of base package."""
from .constants import *
from .exactmath import *
from .domains import *
from .exceptions import *
