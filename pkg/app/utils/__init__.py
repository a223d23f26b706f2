# app/utils/__init__.py
"""
Utility Functions Package
"""
