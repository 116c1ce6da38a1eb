"""bv-hochschild - BV operators and Hochschild cohomology of finite group algebras."""

__version__ = "0.1.0"
