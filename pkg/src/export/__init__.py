# Mesh and Report Export Module
