"""SAT formulation of layout recognition and a page-number search."""
