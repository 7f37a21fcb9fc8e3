# CLI Commands
from facecrypt.commands import analyze, decrypt, difftest, encrypt, features, keytest

__all__ = ["encrypt", "decrypt", "analyze", "difftest", "features", "keytest"]
