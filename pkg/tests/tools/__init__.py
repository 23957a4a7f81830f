# Tools tests module
