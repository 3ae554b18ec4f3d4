"""The G2 root system, its Littelmann patterns, and both sides of the identity."""
