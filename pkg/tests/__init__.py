# nctorus-curvature test package
