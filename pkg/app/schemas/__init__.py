# app/schemas/__init__.py
"""
Pydantic Schemas Package
Data validation and serialization
"""
