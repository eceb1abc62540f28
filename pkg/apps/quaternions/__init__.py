# Exact quaternion arithmetic, matrices and noncommutative determinants
