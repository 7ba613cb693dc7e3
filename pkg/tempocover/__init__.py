"""
Minimum temporal path covers and temporally disjoint path covers of
temporal digraphs.
"""

__version__ = (0, 1, 0)
__author__ = "tempocover contributors"
__docformat__ = "restructuredtext"
