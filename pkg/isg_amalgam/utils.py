"""Small shared building blocks."""


class Zero(object):
    """The adjoined zero shared by every 0-direct structure here."""

    _instance = None

    def __new__(cls):

        if cls._instance is None:
            cls._instance = super(Zero, cls).__new__(cls)
        return cls._instance

    def __repr__(self):

        return 'ZERO'

    def __str__(self):

        return '0'

    def __reduce__(self):

        return (Zero, ())


ZERO = Zero()


class DisjointSet(object):
    """Union-find with path compression and union by rank."""

    def __init__(self, items=()):

        self.parent = {}
        self.rank = {}
        for item in items:
            self.add(item)

    def add(self, item):

        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item):
        """Representative of the set containing item."""

        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        # Path compression.
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        """Merge the sets of a and b.  Return True if they were apart."""

        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return True

    def groups(self):
        """
        Partition as a list of sorted lists, ordered by their smallest
        member.
        """

        classes = {}
        for item in self.parent:
            classes.setdefault(self.find(item), []).append(item)
        return sorted((sorted(members) for members in classes.values()),
                      key=lambda members: members[0])
