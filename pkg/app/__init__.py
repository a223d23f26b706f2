# app/__init__.py
"""
palctl - Palindrome Complexity Lab
Sequence generators, counting engines and executable checks for
palindromic factors of infinite words
"""

__version__ = "1.0.0"
__description__ = "Palindrome and factor complexity of infinite words"
