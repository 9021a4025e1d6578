"""Initialization of hua package."""
from .decomp import *
