# Django apps: quaternions (exact arithmetic), inverses (representations, CLI), oracle (ground truth)
