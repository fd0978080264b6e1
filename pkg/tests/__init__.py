# Empty file just to mark directory as Python package
