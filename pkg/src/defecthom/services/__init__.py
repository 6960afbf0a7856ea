"""Services of the defecthom toolkit."""
