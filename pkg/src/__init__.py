# SurfLab - Source Package
