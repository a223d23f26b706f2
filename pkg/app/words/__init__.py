"""
Words, morphisms and the period calculus
"""
