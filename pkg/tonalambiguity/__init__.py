"""tonalambiguity packages.
"""
