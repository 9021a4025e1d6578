"""Initialization of luqikeng package."""
from .verdict import *
from .threshold import *
from .reference import *
from .table import *
