package blackjack;

/**
 * A playing card with a rank from 1 (ace) to 13 (king).
 */
public class Card {

    public enum Suit { CLUBS, DIAMONDS, HEARTS, SPADES }

    private final int rank;
    private final Suit suit;

    public Card(int rank, Suit suit) {
        if (rank < 1 || rank > 13) {
            throw new IllegalArgumentException("rank " + rank);
        }
        this.rank = rank;
        this.suit = suit;
    }

    public int getValue() {
        if (rank > 10) {
            return 10;
        }
        return rank;
    }

    public boolean isAce() {
        return rank == 1;
    }

    @Override
    public String toString() {
        String[] names = {"A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K"};
        return names[rank - 1] + suit.name().charAt(0);
    }
}
