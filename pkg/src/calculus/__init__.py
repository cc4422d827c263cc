# Wirtinger Calculus Module
