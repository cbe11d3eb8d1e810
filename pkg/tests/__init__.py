# Test suite for MLOps pipeline
