__author__ = 'Maxinv developers'
__version__ = '0.1.0'
