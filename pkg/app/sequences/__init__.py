"""
Sequence zoo package
"""
