try:
    from ._polylog import *  # installed layout: extension inside the package
except ImportError:
    from _polylog import *  # build tree: extension alongside on PYTHONPATH
