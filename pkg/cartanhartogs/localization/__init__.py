"""Initialization of localization package."""
from .hurwitz import *
from .halfplane import *
