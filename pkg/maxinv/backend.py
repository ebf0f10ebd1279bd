from typing import Optional

from maxinv import exceptions
from maxinv.action import ActionGroup, action_closure, extend_to_automorphism, trivial_action
from maxinv.group import GroupTable, closure_from_generators
from maxinv.parser import GroupSource, parse_action_source, parse_group_source
from maxinv.tokenizer import tokenize
from maxinv.tokens import Token


def read_group_source(text: str, filename: str = '<unknown>') -> GroupSource:
    tokens: list[Token] = tokenize(text, filename)
    return parse_group_source(tokens, filename, text)


def parse_group_file(text: str, filename: str = '<unknown>', cap: Optional[int] = None) -> GroupTable:
    source = read_group_source(text, filename)
    return closure_from_generators(source.generators, source.degree, cap, name=filename)


def parse_action_file(text: str, G: GroupTable, source: GroupSource,
                      filename: str = '<unknown>', cap: Optional[int] = None) -> ActionGroup:
    tokens: list[Token] = tokenize(text, filename)
    parsed = parse_action_source(tokens, source.degree, len(source.generators), filename, text)
    gen_ids = [G.element_id(gen) for gen in source.generators]
    automorphisms = []
    for images in parsed.automorphisms:
        image_ids = []
        for index, image in enumerate(images):
            try:
                image_ids.append(G.element_id(image))
            except exceptions.GroupError:
                raise exceptions.ActionError(exceptions.IMAGE_NOT_IN_GROUP % f'g{index}') from None
        automorphisms.append(extend_to_automorphism(G, gen_ids, image_ids))
    return action_closure(G, automorphisms, cap, name=filename)


def load(group_text: str, action_text: Optional[str] = None, group_filename: str = '<group>',
         action_filename: str = '<action>', cap: Optional[int] = None) -> tuple[GroupTable, ActionGroup]:
    source = read_group_source(group_text, group_filename)
    G = closure_from_generators(source.generators, source.degree, cap, name=group_filename)
    if action_text is None:
        return G, trivial_action(G)
    return G, parse_action_file(action_text, G, source, action_filename, cap)
