"""
grassflop: character-level verification of Grassmann flop kernels
"""
