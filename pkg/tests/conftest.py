import sys
from pathlib import Path

# Ensure project root is on sys.path so imports work the same as the tools
sys.path.append(str(Path(__file__).resolve().parents[1]))
