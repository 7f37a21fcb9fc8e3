# Domain Models
from facecrypt.models.blocks import BlockGrid
from facecrypt.models.chaos import ChaoticParams, Digest, KeyMaterial
from facecrypt.models.container import CipherContainer
from facecrypt.models.faps import EdgeMap, FapsRecord, FeatureMaps, GradientPair
from facecrypt.models.image import GrayImage
from facecrypt.models.trace import StageTrace

__all__ = [
    "BlockGrid",
    "ChaoticParams",
    "Digest",
    "KeyMaterial",
    "CipherContainer",
    "EdgeMap",
    "FapsRecord",
    "FeatureMaps",
    "GradientPair",
    "GrayImage",
    "StageTrace",
]
