"""
Command line frontend.

    isg-amalgam decompose --left 3,3,2 --right 2,1,2,3
    isg-amalgam amalgam eval --left 2 --right 1,1 "[1,2]P * [2,1]Q"
    isg-amalgam reilly mul --alpha shift "(1,x0,2)" "(2,x0,1)"
    isg-amalgam gisg mul --pc 2 "a1.a2 * a2'" "a2 * @v'"
    isg-amalgam ugroup gamma --host pc:2 "1[a1 * @v'] 2[@v * a1']"
    isg-amalgam check table.txt
    isg-amalgam brandt dims blocks.txt
"""

import argparse
import logging
import random
import sys

from . import conf
from .brandt import format_matrix
from .engine import Amalgam
from .exceptions import AmalgamError, UsageError
from .gisg import (
    gisg_inv,
    gisg_product,
    max_above as gisg_max_above,
    munn_action,
    natural_leq as gisg_leq,
    polycyclic,
    relation_audit,
    toeplitz_family_audit,
    universal_group_image,
    verify_strongly_e_star_unitary,
)
from .graph import build_block_graph, decompose, decompose_many
from .parsing import (
    format_amalgam,
    format_gisg,
    parse_amalgam,
    parse_bicyclic,
    parse_block_sum,
    parse_gamma,
    parse_gisg,
    parse_graph,
    parse_partition,
    parse_reilly,
    parse_word,
)
from .reilly import (
    ReillySemigroup,
    bn_classifier,
    bn_membership,
    d_class_count,
    parse_submonoid,
    shipped_endomorphism,
    toeplitz_amalgam_group,
    toeplitz_subgroup_rank,
)
from .report import (
    BatchModel,
    CheckModel,
    EnumerationModel,
    NormalFormModel,
    Report,
    ValueModel,
    decomposition_model,
    presentation_model,
)
from .semigroup import parse_table, validate
from .ugroup import (
    combine_universal_groups,
    gamma_audit,
    gamma_image,
    host_by_name,
    maximal_group_image_presentation,
    normalize,
    special_amalgam_letters,
    universal_group_presentation,
)
from .utils import ZERO
from .words import Alphabet, GroupPresentation, format_word

logger = logging.getLogger(__name__)

DECOMPOSE = 0
AMALGAM = 1
REILLY = 2
GISG = 3
UGROUP = 4
CHECK = 5
BRANDT = 6

NAMES = {
    DECOMPOSE: 'decompose',
    AMALGAM: 'amalgam',
    REILLY: 'reilly',
    GISG: 'gisg',
    UGROUP: 'ugroup',
    CHECK: 'check',
    BRANDT: 'brandt',
}


class Command(object):
    """Subcommand id and its validated options."""

    def __init__(self, subcommand, options):

        self.subcommand = subcommand
        self.options = options

    @property
    def name(self):

        action = getattr(self.options, 'action', None)
        if action:
            return '%s %s' % (NAMES[self.subcommand], action)
        return NAMES[self.subcommand]


def read_file(path):

    try:
        with open(path) as stream:
            return stream.read()
    except (IOError, OSError) as error:
        raise UsageError('Cannot read %s: %s' % (path, error))


def flag(value):

    return 'true' if value else 'false'


class Dispatcher(object):
    """Runs one command by its subcommand id."""

    def __init__(self):

        self.methods = {
            DECOMPOSE: self.decompose,
            AMALGAM: self.amalgam,
            REILLY: self.reilly,
            GISG: self.gisg,
            UGROUP: self.ugroup,
            CHECK: self.check,
            BRANDT: self.brandt,
        }

    def apply(self, command):

        return self.methods[command.subcommand](command)

    # Decomposition.

    def decompose(self, command):

        options = command.options
        if options.batch:
            return self.decompose_batch(command)
        if options.left is None or options.right is None:
            raise UsageError('decompose needs --left and --right or --batch')
        graph = build_block_graph(parse_partition(options.left),
                                  parse_partition(options.right))
        report = decompose(graph, unital=options.unital)
        return Report(command.name, report.format(),
                      decomposition_model(report))

    def decompose_batch(self, command):

        options = command.options
        pairs = []
        for line in read_file(options.batch).splitlines():
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise UsageError('Batch lines hold two partitions: %r' % line)
            pairs.append((parse_partition(parts[0]),
                          parse_partition(parts[1])))
        reports = decompose_many(pairs, workers=options.workers,
                                 unital=options.unital)
        text = ''.join('# %s x %s\n%s' % (
            ','.join(map(str, report.left)),
            ','.join(map(str, report.right)), report.format())
            for report in reports)
        model = BatchModel(reports=[decomposition_model(report)
                                    for report in reports])
        return Report(command.name, text, model)

    # Amalgam engine.

    def amalgam(self, command):

        options = command.options
        amalgam = Amalgam(parse_partition(options.left),
                          parse_partition(options.right))
        if options.action == 'enumerate':
            finite = amalgam.enumerate_if_finite(bound=options.bound,
                                                 workers=options.workers)
            labels = [amalgam.format_element(x) for x in finite.elements]
            isomorphic = finite.isomorphic_table()
            text = 'size: %d\nisomorphic: %s\nelements: %s\n' % (
                finite.size, flag(isomorphic), ' '.join(labels))
            return Report(command.name, text, EnumerationModel(
                size=finite.size, isomorphic=isomorphic, labels=labels))
        x = parse_amalgam(options.expression, amalgam)
        form = amalgam.normal_form(x)
        if options.action == 'nf':
            display = amalgam.format_normal_form(form)
            if form is ZERO:
                return Report(command.name, '0\n', ValueModel(value='0'))
            model = NormalFormModel(
                component=form.component, row=form.row,
                word=format_word(form.word,
                                 amalgam.generator_alphabet(form.component)),
                col=form.col, display=display)
            return Report(command.name, display + '\n', model)
        value = format_amalgam(amalgam, x)
        walk = amalgam.format_element(x)
        normal = amalgam.format_normal_form(form)
        text = '%s\nwalk: %s\nnormal form: %s\n' % (value, walk, normal)
        return Report(command.name, text, ValueModel(
            value=value, details={'walk': walk, 'normal_form': normal}))

    # Reilly semigroups and the bicyclic monoid.

    def reilly(self, command):

        options = command.options
        action = options.action
        if action == 'sigma-group':
            return self.sigma_group(command)
        if action == 'bn':
            return self.bicyclic_submonoid(command)
        try:
            alpha = shipped_endomorphism(options.alpha, options.rank)
        except KeyError:
            raise UsageError('Unknown endomorphism %r' % options.alpha)
        semigroup = ReillySemigroup(alpha)
        elements = [parse_reilly(text) for text in options.elements]
        arity = {'mul': None, 'inv': 1, 'above': 1, 'max': 1, 'sigma': 2}
        expected = arity[action]
        if (expected is None and len(elements) < 2) or (
                expected is not None and len(elements) != expected):
            raise UsageError('reilly %s takes %s elements' % (
                action, expected or 'two or more'))
        show = semigroup.format_element
        if action == 'mul':
            value = show(semigroup.product(*elements))
        elif action == 'inv':
            value = show(semigroup.inv(elements[0]))
        elif action == 'above':
            chain = semigroup.elements_above(elements[0])
            return Report(command.name, ''.join(show(y) + '\n' for y in chain),
                          ValueModel(value=show(chain[-1]),
                                     details={'chain': [show(y)
                                                        for y in chain]}))
        elif action == 'max':
            value = show(semigroup.max_above(elements[0]))
        else:
            value = flag(semigroup.sigma_equivalent(*elements))
        return Report(command.name, value + '\n', ValueModel(value=value))

    def sigma_group(self, command):

        u = parse_submonoid(command.options.u)
        presentation = toeplitz_amalgam_group(u)
        rank = toeplitz_subgroup_rank(u)
        classes = d_class_count(u)
        model = presentation_model(presentation)
        text = '%s\nabelianization: %s\nsubgroup rank: %s\nD-classes: %s\n' % (
            presentation, model.abelianization.display,
            'inf' if rank is None else rank,
            'inf' if classes is None else classes)
        return Report(command.name, text, ValueModel(
            value=str(presentation), details={
                'submonoid': u.name,
                'presentation': model.model_dump(),
                'subgroup_rank': rank,
                'd_classes': classes,
            }))

    def bicyclic_submonoid(self, command):

        options = command.options
        sample = [parse_bicyclic(text) for text in options.elements]
        if any(x is ZERO for x in sample):
            raise UsageError('The bicyclic monoid has no zero here')
        if options.n is None:
            name = bn_classifier(sample)
            return Report(command.name, name + '\n', ValueModel(value=name))
        members = [bn_membership(options.n, x) for x in sample]
        text = ''.join('%s %s\n' % (x, flag(member))
                       for x, member in zip(sample, members))
        return Report(command.name, text, ValueModel(
            value=flag(all(members)),
            details={'members': dict((str(x), member)
                                     for x, member in zip(sample, members))}))

    # Graph inverse semigroups.

    def gisg(self, command):

        options = command.options
        if options.graph:
            graph = parse_graph(read_file(options.graph))
        else:
            graph = polycyclic(options.pc)
        action = options.action
        if action == 'verify':
            certificate = verify_strongly_e_star_unitary(graph, options.length)
            text = 'checked: %d\nholds: %s\n' % (certificate.checked,
                                                 flag(certificate.holds))
            details = {'checked': certificate.checked}
            if not certificate.holds:
                counterexample = format_gisg(certificate.counterexample)
                text += 'counterexample: %s\n' % counterexample
                details['counterexample'] = counterexample
            return Report(command.name, text, ValueModel(
                value=flag(certificate.holds), details=details),
                exit_code=0 if certificate.holds else 1)
        if action == 'audit':
            failures = ['%s: got %s' % (name, format_gisg(got))
                        for name, got, _ in relation_audit(graph)]
            failures.extend('%s: got %s' % (name, format_gisg(got))
                            for name, got in toeplitz_family_audit(graph))
            text = ''.join(line + '\n' for line in failures) or 'ok\n'
            return Report(command.name, text, ValueModel(
                value=flag(not failures), details={'failures': failures}),
                exit_code=1 if failures else 0)
        elements = [parse_gisg(text, graph) for text in options.elements]
        arity = {'mul': None, 'inv': 1, 'leq': 2, 'image': 1, 'munn': 2,
                 'max': 1}
        expected = arity[action]
        if (expected is None and len(elements) < 2) or (
                expected is not None and len(elements) != expected):
            raise UsageError('gisg %s takes %s elements' % (
                action, expected or 'two or more'))
        if action == 'mul':
            value = format_gisg(gisg_product(*elements))
        elif action == 'inv':
            value = format_gisg(gisg_inv(elements[0]))
        elif action == 'leq':
            value = flag(gisg_leq(*elements))
        elif action == 'image':
            value = format_word(universal_group_image(elements[0], graph),
                                graph.alphabet)
        elif action == 'munn':
            if elements[1] is not ZERO and not elements[1].is_idempotent():
                raise UsageError('munn acts on idempotents')
            value = format_gisg(munn_action(*elements))
        else:
            value = format_gisg(gisg_max_above(elements[0], graph))
        return Report(command.name, value + '\n', ValueModel(value=value))

    # Universal groups.

    def ugroup(self, command):

        options = command.options
        action = options.action
        if action == 'present':
            semigroup = validate(parse_table(read_file(options.table)))
            if options.sigma:
                presentation = maximal_group_image_presentation(semigroup)
            else:
                presentation = universal_group_presentation(semigroup)
            model = presentation_model(presentation)
            text = '%s\nabelianization: %s\n' % (
                presentation, model.abelianization.display)
            return Report(command.name, text, model)
        if action == 'combine':
            return self.combine(command)
        host = host_by_name(options.host)
        if options.random:
            rng = random.Random(options.seed)
            audit = gamma_audit(host, rng, options.random,
                                length=options.length)
            text = 'words: %d\nnonzero: %d\nfailures: %d\n' % (
                audit.words, audit.nonzero, len(audit.failures))
            return Report(command.name, text, ValueModel(
                value=flag(audit.holds), details={
                    'words': audit.words, 'nonzero': audit.nonzero,
                    'failures': [u.format(host) + ' | ' + v.format(host)
                                 for u, v in audit.failures]}),
                exit_code=0 if audit.holds else 1)
        if options.word is None:
            raise UsageError('ugroup gamma needs a word or --random')
        word = parse_gamma(options.word, host)
        image = gamma_image(host, word)
        reduced = normalize(host, word)
        if image is ZERO:
            value = '0'
        else:
            value = format_word(image, Alphabet(special_amalgam_letters(host)))
        normal = '0' if reduced is ZERO else reduced.format(host)
        text = '%s\nletters: %s\n' % (value, normal)
        return Report(command.name, text, ValueModel(
            value=value, details={'letters': normal}))

    def combine(self, command):

        options = command.options
        first = GroupPresentation(options.first.split(','))
        second = GroupPresentation(options.second.split(','))
        pairs = []
        for pair in options.pair or []:
            if pair.count('=') != 1:
                raise UsageError('Identify words as U=V, got %r' % pair)
            u, v = pair.split('=')
            pairs.append((parse_word(u.strip(), first.alphabet),
                          parse_word(v.strip(), second.alphabet)))
        presentation = combine_universal_groups(first, second, pairs)
        model = presentation_model(presentation)
        text = '%s\nabelianization: %s\n' % (presentation,
                                             model.abelianization.display)
        return Report(command.name, text, model)

    # Tables and block sums.

    def check(self, command):

        semigroup = validate(parse_table(read_file(command.options.table)))
        green = semigroup.green()
        sigma = semigroup.sigma_classes()
        zero_unitary = None
        if semigroup.zero is not None:
            zero_unitary = semigroup.is_zero_e_star_unitary()
        model = CheckModel(
            size=semigroup.n, zero=semigroup.zero,
            identity=semigroup.identity,
            idempotents=sorted(semigroup.idempotents),
            inverses=[semigroup.inverse(a) for a in semigroup.elements()],
            d_classes=green.d, sigma_classes=sigma.classes,
            e_unitary=semigroup.is_e_unitary(),
            zero_e_star_unitary=zero_unitary)
        lines = [
            'inverse semigroup of order %d' % semigroup.n,
            'zero: %s' % ('none' if semigroup.zero is None
                          else semigroup.label(semigroup.zero)),
            'identity: %s' % ('none' if semigroup.identity is None
                              else semigroup.label(semigroup.identity)),
            'idempotents: %s' % ' '.join(semigroup.label(e)
                                         for e in model.idempotents),
            'D-classes: %d' % len(green.d),
            'sigma-classes: %d' % len(sigma.classes),
            'E-unitary: %s' % flag(model.e_unitary),
        ]
        if zero_unitary is not None:
            lines.append('0-E*-unitary: %s' % flag(zero_unitary))
        return Report(command.name, '\n'.join(lines) + '\n', model)

    def brandt(self, command):

        options = command.options
        blocks = parse_block_sum(read_file(options.file))
        if options.action == 'dims':
            dimensions = blocks.algebra_dimensions(contracted=not options.unital)
            return Report(command.name, '%s\n' % dimensions, ValueModel(
                value=dimensions.display, details={
                    'total': dimensions.total,
                    'summands': [list(s) for s in dimensions.summands]}))
        units = blocks.to_matrix_units()
        parts = []
        for x in blocks.elements():
            if x is ZERO:
                continue
            parts.append('%s\n%s' % (blocks.format_element(x),
                                     format_matrix(units[x])))
        return Report(command.name, '\n'.join(parts), ValueModel(
            value=str(len(parts)), details={'size': blocks.N}))


def run(command):
    """Execute the command.  Returns the report and the exit code."""

    try:
        report = Dispatcher().apply(command)
    except AmalgamError as error:
        logger.debug('%s failed: %r', command.name, error)
        report = Report.failure(command.name, error)
    return report, report.exit_code


# Argument parsing.

def add_partitions(parser):

    parser.add_argument('--left', required=True, help='P block sizes, 3,3,2')
    parser.add_argument('--right', required=True, help='Q block sizes')


def build_parser():

    parser = argparse.ArgumentParser(
        prog='isg-amalgam',
        description='Calculators for amalgams of inverse semigroups.')
    parser.add_argument('--json', action='store_true',
                        help='print the JSON report')
    parser.add_argument('--msgpack', metavar='FILE',
                        help='also write the report as msgpack')
    parser.add_argument('--debug', action='store_true')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed of randomized checks')
    parser.add_argument('--workers', type=int, default=conf.WORKERS)
    commands = parser.add_subparsers(dest='subcommand_name')
    commands.required = True

    decompose_parser = commands.add_parser('decompose')
    decompose_parser.set_defaults(subcommand=DECOMPOSE, action=None)
    decompose_parser.add_argument('--left')
    decompose_parser.add_argument('--right')
    decompose_parser.add_argument('--batch', metavar='FILE')
    decompose_parser.add_argument('--unital', action='store_true')

    amalgam_parser = commands.add_parser('amalgam')
    amalgam_parser.set_defaults(subcommand=AMALGAM)
    actions = amalgam_parser.add_subparsers(dest='action')
    actions.required = True
    for name in ('eval', 'nf'):
        action = actions.add_parser(name)
        add_partitions(action)
        action.add_argument('expression')
    action = actions.add_parser('enumerate')
    add_partitions(action)
    action.add_argument('--bound', type=int, default=conf.ENUMERATION_BOUND)

    reilly_parser = commands.add_parser('reilly')
    reilly_parser.set_defaults(subcommand=REILLY)
    actions = reilly_parser.add_subparsers(dest='action')
    actions.required = True
    for name in ('mul', 'inv', 'above', 'max', 'sigma'):
        action = actions.add_parser(name)
        action.add_argument('--alpha', default='identity',
                            help='identity, shift or power<k>')
        action.add_argument('--rank', type=int, default=None)
        action.add_argument('elements', nargs='+')
    action = actions.add_parser('sigma-group')
    action.add_argument('--u', required=True, help='E or B:<n>')
    action = actions.add_parser('bn')
    action.add_argument('--n', type=int, default=None)
    action.add_argument('elements', nargs='+')

    gisg_parser = commands.add_parser('gisg')
    gisg_parser.set_defaults(subcommand=GISG)
    actions = gisg_parser.add_subparsers(dest='action')
    actions.required = True
    for name in ('mul', 'inv', 'leq', 'image', 'munn', 'max', 'verify',
                 'audit'):
        action = actions.add_parser(name)
        source = action.add_mutually_exclusive_group()
        source.add_argument('--graph', metavar='FILE')
        source.add_argument('--pc', type=int, default=2,
                            help='polycyclic monoid on this many loops')
        if name == 'verify':
            action.add_argument('--length', type=int, default=4)
        elif name != 'audit':
            action.add_argument('elements', nargs='+')

    ugroup_parser = commands.add_parser('ugroup')
    ugroup_parser.set_defaults(subcommand=UGROUP)
    actions = ugroup_parser.add_subparsers(dest='action')
    actions.required = True
    action = actions.add_parser('present')
    action.add_argument('table')
    action.add_argument('--sigma', action='store_true',
                        help='maximal group image instead')
    action = actions.add_parser('gamma')
    action.add_argument('--host', default='pc:2')
    action.add_argument('--random', type=int, default=0, metavar='COUNT')
    action.add_argument('--length', type=int, default=3)
    action.add_argument('word', nargs='?')
    action = actions.add_parser('combine')
    action.add_argument('--first', required=True, help='generators a,b')
    action.add_argument('--second', required=True)
    action.add_argument('--pair', action='append', help='U=V')

    check_parser = commands.add_parser('check')
    check_parser.set_defaults(subcommand=CHECK, action=None)
    check_parser.add_argument('table')

    brandt_parser = commands.add_parser('brandt')
    brandt_parser.set_defaults(subcommand=BRANDT)
    actions = brandt_parser.add_subparsers(dest='action')
    actions.required = True
    action = actions.add_parser('dims')
    action.add_argument('file')
    action.add_argument('--unital', action='store_true')
    action = actions.add_parser('units')
    action.add_argument('file')
    return parser


def main(argv=None):

    options = build_parser().parse_args(argv)
    conf.setup_logger(options.debug)
    report, code = run(Command(options.subcommand, options))
    if options.json:
        sys.stdout.write(report.to_json())
    elif code and report.error is not None:
        sys.stderr.write(report.text)
    else:
        sys.stdout.write(report.text)
    if options.msgpack:
        with open(options.msgpack, 'wb') as stream:
            stream.write(report.to_msgpack())
    return code


if __name__ == '__main__':
    sys.exit(main())
