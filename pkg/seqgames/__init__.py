"""
Top level of the seqgames package.
"""

VERSION = "0.1.0"
