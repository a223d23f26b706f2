# app/services/__init__.py
"""
Business Logic Services Package
"""
