"""High-precision selector kernels and zeta/beta identities."""
