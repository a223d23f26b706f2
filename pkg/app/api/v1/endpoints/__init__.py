# app/api/v1/endpoints/__init__.py
"""
API Endpoints Package
"""
