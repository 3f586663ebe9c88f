"""Instance loading and report rendering."""
