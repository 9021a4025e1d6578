"""Initialization of cartanhartogs package."""
from .base import *
from .hua import *
from .localization import *
from .luqikeng import *
from .kernel import *
from .oracle import *
from .oracle.suite import *
from .config import *
from .parallel import *
from .utils import *
