# app/api/v1/__init__.py
"""
API Version 1 Package
"""
