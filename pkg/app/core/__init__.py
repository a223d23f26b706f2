"""
Core configuration and errors
"""
