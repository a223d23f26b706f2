"""
Counting engines: palindromic tree, suffix automaton, stabilized profiles
"""
