"""Hereditarily finite sets and their codes as well-founded extensional relations."""
from .errors import (
    CodecError, CodeSyntaxError, WfeError, IllFounded, NotExtensional, NoUniqueTop, Disconnected, LayoutViolation,
)
from .hfset import HFSet, EMPTY, kuratowski, unpack_pair, sets_of_rank_at_most, parse_hfset
from .wfe import (
    PAIRING, pair, unpair, WfeCode, check_wfe, top_node, CollapseResult, collapse_images, mostowski_collapse,
    DecodeResult, cod_decode, cod_encode, code_height, codes_isomorphic, LayoutReport, pmax_layout_check, parse_code,
)

__all__ = [
    'CodecError', 'CodeSyntaxError', 'WfeError', 'IllFounded', 'NotExtensional', 'NoUniqueTop', 'Disconnected',
    'LayoutViolation',
    'HFSet', 'EMPTY', 'kuratowski', 'unpack_pair', 'sets_of_rank_at_most', 'parse_hfset',
    'PAIRING', 'pair', 'unpair', 'WfeCode', 'check_wfe', 'top_node', 'CollapseResult', 'collapse_images',
    'mostowski_collapse', 'DecodeResult', 'cod_decode', 'cod_encode', 'code_height', 'codes_isomorphic',
    'LayoutReport', 'pmax_layout_check', 'parse_code',
]
