# Determinantal representations of generalized inverses
