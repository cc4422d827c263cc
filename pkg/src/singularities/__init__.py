# Singularity Analysis Module
