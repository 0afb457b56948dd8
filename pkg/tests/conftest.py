import os
import sys

# prefer the in-tree sources (and in-place built extension) over any install
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
