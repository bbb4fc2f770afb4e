from epsilon_whitehead.pipeline.verify import VerificationReport, verify, verify_for_epsilon
from epsilon_whitehead.pipeline.word_family import gen_wk, wk_alphabet

__all__ = [
    "VerificationReport",
    "gen_wk",
    "verify",
    "verify_for_epsilon",
    "wk_alphabet",
]
