"""mot2: exact kit for biset bicategories, permutation bimodules, Mackey functors and blocks."""

__version__ = "0.1.0"
