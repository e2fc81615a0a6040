# coding: utf-8
# Standard Python libraries
import re

# naipm imports
from ..errors import BanSyntaxError

__all__ = ['parse_terms', 'format_terms']

_sign = re.compile(r'[+-]')
_term = re.compile(r'(?P<coef>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?'
                   r'(?P<unit>[an])?'
                   r'(?:\^(?P<exp>\d+))?')

def parse_terms(text):
    """
    Parses a BAN literal into its monosemia.

    The grammar is
        expression ::= [sign] term (sign term)*
        term       ::= decimal [unit ['^' unsigned-int]] | unit ['^' unsigned-int]
    where unit 'a' stands for alpha and 'n' for eta = 1/alpha.  Whitespace is
    ignored.

    Parameters
    ----------
    text : str
        The literal, e.g. '8+14n' or '2.5a^2-3a+1'.

    Returns
    -------
    dict
        Maps each alpha power to the summed coefficient of the terms with that
        power.

    Raises
    ------
    BanSyntaxError
        If text does not match the grammar.
    """
    if not isinstance(text, str):
        raise TypeError('BAN literal must be a str')

    # Strip whitespace but remember where each kept character came from
    positions = [i for i, ch in enumerate(text) if not ch.isspace()]
    compact = ''.join(text[i] for i in positions)
    def origin(index):
        if index < len(positions):
            return positions[index]
        return len(text)

    if compact == '':
        raise BanSyntaxError('empty BAN literal', text, 0)

    terms = {}
    index = 0
    first = True
    while index < len(compact):
        
        # Sign is mandatory between terms, optional before the first
        sign = 1.0
        match = _sign.match(compact, index)
        if match is not None:
            if match.group() == '-':
                sign = -1.0
            index = match.end()
        elif not first:
            raise BanSyntaxError("expected '+' or '-'", text, origin(index))
        first = False

        match = _term.match(compact, index)
        coef, unit, exp = match.group('coef', 'unit', 'exp')
        if coef is None and unit is None:
            raise BanSyntaxError('expected a number, a or n', text, origin(index))
        if exp is not None and unit is None:
            raise BanSyntaxError("'^' must follow a or n", text, origin(index))
        
        value = sign * (float(coef) if coef is not None else 1.0)
        power = 1 if exp is None else int(exp)
        if unit is None:
            power = 0
        elif unit == 'n':
            power = -power
        terms[power] = terms.get(power, 0.0) + value
        index = match.end()

    return terms

def _unit(power):
    if power == 0:
        return ''
    letter = 'a' if power > 0 else 'n'
    if abs(power) == 1:
        return letter
    return f'{letter}^{abs(power)}'

def format_terms(monosemia, precision=None):
    """
    Renders monosemia as a BAN literal in descending powers.

    Parameters
    ----------
    monosemia : iterable of (int, float)
        The (power, coefficient) pairs, highest power first.
    precision : int, optional
        Significant digits for the coefficients.  If not given, the shortest
        repr that round-trips exactly is used.

    Returns
    -------
    str
        The literal, '0' if there are no monosemia.
    """
    text = ''
    for power, coef in monosemia:
        if precision is None:
            number = repr(float(abs(coef)))
        else:
            number = f'{abs(coef):.{precision}g}'
        unit = _unit(power)
        if unit != '' and number in ('1', '1.0'):
            number = ''
        
        if coef < 0:
            text += '-'
        elif text != '':
            text += '+'
        text += number + unit

    if text == '':
        return '0'
    return text
