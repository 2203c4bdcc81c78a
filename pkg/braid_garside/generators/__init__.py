"""
Sources of braids: random words over one or several braid groups, and the worked examples.
"""
