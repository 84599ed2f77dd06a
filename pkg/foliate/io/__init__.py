"""Reading and writing form documents and certificates."""
