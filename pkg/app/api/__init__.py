# app/api/__init__.py
"""
API Package for the palindrome complexity lab
"""
