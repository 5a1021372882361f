"""Binary quadratic forms, double covers and their norm forms over exact rings."""
