# Surface Construction Module
