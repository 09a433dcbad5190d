// Generated from the live service; real response bodies keyed by endpoint+body.
export const FIXTURES: Record<string, { status: number; body: unknown }> = {
  "/analyze {\"u\":[1,3,2,4],\"v\":[2,1,4,3],\"w\":[2,3,4,1]}": {
    "body": {
      "bruhat_possible": false,
      "dc_trivial": false,
      "descents": [
        [
          2
        ],
        [
          1,
          3
        ],
        [
          3
        ]
      ],
      "legal_moves": [
        {
          "col": 1,
          "from": 2,
          "to": 1
        },
        {
          "col": 1,
          "from": 2,
          "to": 3
        },
        {
          "col": 2,
          "from": 1,
          "to": 2
        },
        {
          "col": 2,
          "from": 1,
          "to": 3
        }
      ],
      "lengths": [
        1,
        2,
        3
      ],
      "n": 4,
      "problem": {
        "u": [
          1,
          3,
          2,
          4
        ],
        "v": [
          2,
          1,
          4,
          3
        ],
        "w": [
          2,
          3,
          4,
          1
        ]
      },
      "vertex": true,
      "witness_column": null
    },
    "status": 200
  },
  "/analyze {\"u\":[1,3,2,4],\"v\":[3,1,4,2],\"w\":[1,4,2,3]}": {
    "body": {
      "bruhat_possible": true,
      "dc_trivial": false,
      "descents": [
        [
          2
        ],
        [
          1,
          3
        ],
        [
          2
        ]
      ],
      "legal_moves": [
        {
          "col": 1,
          "from": 2,
          "to": 1
        },
        {
          "col": 1,
          "from": 2,
          "to": 3
        },
        {
          "col": 3,
          "from": 2,
          "to": 1
        },
        {
          "col": 3,
          "from": 2,
          "to": 3
        }
      ],
      "lengths": [
        1,
        3,
        2
      ],
      "n": 4,
      "problem": {
        "u": [
          1,
          3,
          2,
          4
        ],
        "v": [
          3,
          1,
          4,
          2
        ],
        "w": [
          1,
          4,
          2,
          3
        ]
      },
      "vertex": true,
      "witness_column": null
    },
    "status": 200
  },
  "/analyze {\"u\":[1,3,2],\"v\":[2,1,3],\"w\":[2,1,3]}": {
    "body": {
      "bruhat_possible": true,
      "dc_trivial": false,
      "descents": [
        [
          2
        ],
        [
          1
        ],
        [
          1
        ]
      ],
      "legal_moves": [
        {
          "col": 2,
          "from": 1,
          "to": 2
        },
        {
          "col": 2,
          "from": 1,
          "to": 3
        }
      ],
      "lengths": [
        1,
        1,
        1
      ],
      "n": 3,
      "problem": {
        "u": [
          1,
          3,
          2
        ],
        "v": [
          2,
          1,
          3
        ],
        "w": [
          2,
          1,
          3
        ]
      },
      "vertex": true,
      "witness_column": null
    },
    "status": 200
  },
  "/analyze {\"u\":[2,1,4,3,6,5],\"v\":[1,5,4,3,2,6],\"w\":[3,2,1,6,5,4]}": {
    "body": {
      "bruhat_possible": true,
      "dc_trivial": false,
      "descents": [
        [
          1,
          3,
          5
        ],
        [
          2,
          3,
          4
        ],
        [
          1,
          2,
          4,
          5
        ]
      ],
      "legal_moves": [],
      "lengths": [
        3,
        6,
        6
      ],
      "n": 6,
      "problem": {
        "u": [
          2,
          1,
          4,
          3,
          6,
          5
        ],
        "v": [
          1,
          5,
          4,
          3,
          2,
          6
        ],
        "w": [
          3,
          2,
          1,
          6,
          5,
          4
        ]
      },
      "vertex": true,
      "witness_column": null
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":1,\"from\":2,\"to\":1},\"problem\":{\"u\":[1,3,2,4],\"v\":[2,1,4,3],\"w\":[2,3,4,1]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": false,
        "dc_trivial": true,
        "descents": [
          [
            1
          ],
          [
            3
          ],
          [
            3
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 1,
            "to": 2
          },
          {
            "col": 1,
            "from": 1,
            "to": 3
          }
        ],
        "lengths": [
          2,
          1,
          3
        ],
        "n": 4,
        "problem": {
          "u": [
            3,
            1,
            2,
            4
          ],
          "v": [
            1,
            2,
            4,
            3
          ],
          "w": [
            2,
            3,
            4,
            1
          ]
        },
        "vertex": true,
        "witness_column": 2
      },
      "problem": {
        "u": [
          3,
          1,
          2,
          4
        ],
        "v": [
          1,
          2,
          4,
          3
        ],
        "w": [
          2,
          3,
          4,
          1
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":1,\"from\":2,\"to\":3},\"problem\":{\"u\":[1,2,3],\"v\":[2,1,3],\"w\":[2,3,1]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [],
          [
            1,
            2
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 3,
            "to": 1
          },
          {
            "col": 1,
            "from": 3,
            "to": 2
          },
          {
            "col": 2,
            "from": 3,
            "to": 1
          },
          {
            "col": 2,
            "from": 3,
            "to": 2
          }
        ],
        "lengths": [
          0,
          0,
          3
        ],
        "n": 3,
        "problem": {
          "u": [
            1,
            2,
            3
          ],
          "v": [
            1,
            2,
            3
          ],
          "w": [
            3,
            2,
            1
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3
        ],
        "v": [
          1,
          2,
          3
        ],
        "w": [
          3,
          2,
          1
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":1,\"from\":2,\"to\":3},\"problem\":{\"u\":[1,3,2,4],\"v\":[3,1,4,2],\"w\":[1,4,2,3]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [
            2
          ],
          [
            3
          ],
          [
            1
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 3,
            "to": 1
          },
          {
            "col": 1,
            "from": 3,
            "to": 2
          },
          {
            "col": 2,
            "from": 1,
            "to": 2
          },
          {
            "col": 2,
            "from": 1,
            "to": 3
          },
          {
            "col": 3,
            "from": 2,
            "to": 1
          },
          {
            "col": 3,
            "from": 2,
            "to": 3
          }
        ],
        "lengths": [
          1,
          2,
          3
        ],
        "n": 4,
        "problem": {
          "u": [
            1,
            3,
            2,
            4
          ],
          "v": [
            1,
            3,
            4,
            2
          ],
          "w": [
            4,
            1,
            2,
            3
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          3,
          2,
          4
        ],
        "v": [
          1,
          3,
          4,
          2
        ],
        "w": [
          4,
          1,
          2,
          3
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":1,\"from\":3,\"to\":2},\"problem\":{\"u\":[1,2,3],\"v\":[1,2,3],\"w\":[3,2,1]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [
            1
          ],
          [
            2
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 2,
            "to": 1
          },
          {
            "col": 1,
            "from": 2,
            "to": 3
          },
          {
            "col": 2,
            "from": 3,
            "to": 1
          },
          {
            "col": 2,
            "from": 3,
            "to": 2
          }
        ],
        "lengths": [
          0,
          1,
          2
        ],
        "n": 3,
        "problem": {
          "u": [
            1,
            2,
            3
          ],
          "v": [
            2,
            1,
            3
          ],
          "w": [
            2,
            3,
            1
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3
        ],
        "v": [
          2,
          1,
          3
        ],
        "w": [
          2,
          3,
          1
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":2,\"from\":1,\"to\":3},\"problem\":{\"u\":[1,3,2,4],\"v\":[1,3,4,2],\"w\":[4,1,2,3]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [
            3
          ],
          [
            1,
            2
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 3,
            "to": 1
          },
          {
            "col": 1,
            "from": 3,
            "to": 2
          },
          {
            "col": 2,
            "from": 3,
            "to": 1
          },
          {
            "col": 2,
            "from": 3,
            "to": 2
          },
          {
            "col": 3,
            "from": 2,
            "to": 1
          },
          {
            "col": 3,
            "from": 2,
            "to": 3
          }
        ],
        "lengths": [
          0,
          2,
          4
        ],
        "n": 4,
        "problem": {
          "u": [
            1,
            2,
            3,
            4
          ],
          "v": [
            1,
            3,
            4,
            2
          ],
          "w": [
            4,
            2,
            1,
            3
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3,
          4
        ],
        "v": [
          1,
          3,
          4,
          2
        ],
        "w": [
          4,
          2,
          1,
          3
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":2,\"from\":1,\"to\":3},\"problem\":{\"u\":[1,3,2],\"v\":[2,1,3],\"w\":[2,1,3]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [
            1
          ],
          [
            2
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 2,
            "to": 1
          },
          {
            "col": 1,
            "from": 2,
            "to": 3
          },
          {
            "col": 2,
            "from": 3,
            "to": 1
          },
          {
            "col": 2,
            "from": 3,
            "to": 2
          }
        ],
        "lengths": [
          0,
          1,
          2
        ],
        "n": 3,
        "problem": {
          "u": [
            1,
            2,
            3
          ],
          "v": [
            2,
            1,
            3
          ],
          "w": [
            2,
            3,
            1
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3
        ],
        "v": [
          2,
          1,
          3
        ],
        "w": [
          2,
          3,
          1
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":2,\"from\":2,\"to\":3},\"problem\":{\"u\":[1,2,3,4],\"v\":[1,3,2,4],\"w\":[4,2,3,1]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [],
          [
            1,
            2,
            3
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 3,
            "to": 1
          },
          {
            "col": 1,
            "from": 3,
            "to": 2
          },
          {
            "col": 2,
            "from": 3,
            "to": 1
          },
          {
            "col": 2,
            "from": 3,
            "to": 2
          },
          {
            "col": 3,
            "from": 3,
            "to": 1
          },
          {
            "col": 3,
            "from": 3,
            "to": 2
          }
        ],
        "lengths": [
          0,
          0,
          6
        ],
        "n": 4,
        "problem": {
          "u": [
            1,
            2,
            3,
            4
          ],
          "v": [
            1,
            2,
            3,
            4
          ],
          "w": [
            4,
            3,
            2,
            1
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3,
          4
        ],
        "v": [
          1,
          2,
          3,
          4
        ],
        "w": [
          4,
          3,
          2,
          1
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":2,\"from\":3,\"to\":1},\"problem\":{\"u\":[1,2,3],\"v\":[2,1,3],\"w\":[2,3,1]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [
            2
          ],
          [
            1
          ],
          [
            1
          ]
        ],
        "legal_moves": [
          {
            "col": 2,
            "from": 1,
            "to": 2
          },
          {
            "col": 2,
            "from": 1,
            "to": 3
          }
        ],
        "lengths": [
          1,
          1,
          1
        ],
        "n": 3,
        "problem": {
          "u": [
            1,
            3,
            2
          ],
          "v": [
            2,
            1,
            3
          ],
          "w": [
            2,
            1,
            3
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          3,
          2
        ],
        "v": [
          2,
          1,
          3
        ],
        "w": [
          2,
          1,
          3
        ]
      }
    },
    "status": 200
  },
  "/move {\"move\":{\"col\":3,\"from\":2,\"to\":1},\"problem\":{\"u\":[1,3,2,4],\"v\":[2,1,4,3],\"w\":[2,3,4,1]}}": {
    "body": {
      "error": {
        "code": "illegal_move",
        "message": "column 3 has 2 descents; moves need exactly one descending argument"
      }
    },
    "status": 422
  },
  "/move {\"move\":{\"col\":3,\"from\":2,\"to\":3},\"problem\":{\"u\":[1,2,3,4],\"v\":[1,3,4,2],\"w\":[4,2,1,3]}}": {
    "body": {
      "analysis": {
        "bruhat_possible": true,
        "dc_trivial": false,
        "descents": [
          [],
          [
            2
          ],
          [
            1,
            3
          ]
        ],
        "legal_moves": [
          {
            "col": 1,
            "from": 3,
            "to": 1
          },
          {
            "col": 1,
            "from": 3,
            "to": 2
          },
          {
            "col": 2,
            "from": 2,
            "to": 1
          },
          {
            "col": 2,
            "from": 2,
            "to": 3
          },
          {
            "col": 3,
            "from": 3,
            "to": 1
          },
          {
            "col": 3,
            "from": 3,
            "to": 2
          }
        ],
        "lengths": [
          0,
          1,
          5
        ],
        "n": 4,
        "problem": {
          "u": [
            1,
            2,
            3,
            4
          ],
          "v": [
            1,
            3,
            2,
            4
          ],
          "w": [
            4,
            2,
            3,
            1
          ]
        },
        "vertex": true,
        "witness_column": null
      },
      "problem": {
        "u": [
          1,
          2,
          3,
          4
        ],
        "v": [
          1,
          3,
          2,
          4
        ],
        "w": [
          4,
          2,
          3,
          1
        ]
      }
    },
    "status": 200
  },
  "/path {\"goal\":\"easy\",\"problem\":{\"u\":[1,3,2,4],\"v\":[3,1,4,2],\"w\":[1,4,2,3]}}": {
    "body": {
      "end": {
        "u": [
          1,
          2,
          3,
          4
        ],
        "v": [
          1,
          2,
          3,
          4
        ],
        "w": [
          4,
          3,
          2,
          1
        ]
      },
      "found": true,
      "goal": "easy",
      "path": {
        "moves": [
          {
            "col": 1,
            "from": 2,
            "to": 3
          },
          {
            "col": 2,
            "from": 1,
            "to": 3
          },
          {
            "col": 3,
            "from": 2,
            "to": 3
          },
          {
            "col": 2,
            "from": 2,
            "to": 3
          }
        ],
        "start": {
          "u": [
            1,
            3,
            2,
            4
          ],
          "v": [
            3,
            1,
            4,
            2
          ],
          "w": [
            1,
            4,
            2,
            3
          ]
        }
      }
    },
    "status": 200
  },
  "/path {\"goal\":\"easy\",\"problem\":{\"u\":[2,1,4,3,6,5],\"v\":[1,5,4,3,2,6],\"w\":[3,2,1,6,5,4]}}": {
    "body": {
      "found": false,
      "goal": "easy"
    },
    "status": 200
  },
  "/path {\"goal\":\"trivial\",\"problem\":{\"u\":[1,3,2,4],\"v\":[2,1,4,3],\"w\":[2,3,4,1]}}": {
    "body": {
      "end": {
        "u": [
          3,
          1,
          2,
          4
        ],
        "v": [
          1,
          2,
          4,
          3
        ],
        "w": [
          2,
          3,
          4,
          1
        ]
      },
      "found": true,
      "goal": "trivial",
      "path": {
        "moves": [
          {
            "col": 1,
            "from": 2,
            "to": 1
          }
        ],
        "start": {
          "u": [
            1,
            3,
            2,
            4
          ],
          "v": [
            2,
            1,
            4,
            3
          ],
          "w": [
            2,
            3,
            4,
            1
          ]
        }
      }
    },
    "status": 200
  }
};
