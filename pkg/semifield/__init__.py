from .constants import Budget
from .data import BudgetExceeded
from .data import ParseError
from .data import SemifieldError
from .data import SignatureError
from .data import TranslationError
from .decide import decide_lgroup
from .decide import decide_statement
from .decide import decide_tropical
from .decide import verify_verdict
from .main import run
from .tree import parse
