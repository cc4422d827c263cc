# Expression Language Module
